# Workflow tests
