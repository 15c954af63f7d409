# Service tests
