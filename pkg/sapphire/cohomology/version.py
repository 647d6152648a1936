# Read by setup.py through exec, so it must not import anything from the package
version = "0.3.0"
