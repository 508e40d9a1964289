h 3 0
