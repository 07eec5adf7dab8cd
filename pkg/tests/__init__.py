# DO NOT REMOVE THIS FILE
# It is required for test modules import.
