void swap(int *x, int *y)
{
    int t = *x;
    *x = *y;
    *y = t;
}
int sum(int **rows, int n)
{
    int s = 0, *p;
    for (p = rows[0]; p < rows[0] + n; p++)
        s += *p;
    return s + **rows + *(*(rows + 1) + 2);
}
