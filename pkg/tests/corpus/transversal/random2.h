h 2 2
2
1
