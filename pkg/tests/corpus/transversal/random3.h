h 7 10
7
4 5
6
3 5
3 7
1 2 4 5
1 2 4
1 4 5 7
4 6 7
4
