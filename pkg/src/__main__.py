# -*- coding: utf-8 -*-
from src.main import main

main()
