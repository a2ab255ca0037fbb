int loops(int n)
{
    int i, j, s = 0;
    for (;;)
        break;
    for (i = 0; i < n; i++)
        for (int k = 0, m = 1; k < m; k++, m--)
            s += k;
    while (n--)
        continue;
    do
        s++;
    while (s < 10);
    do {
        s--;
    } while (s > 5);
    for (i = 0, j = n; i < j; i++, j--)
        ;
    return s;
}
