int by_value(const void *a, const void *b)
{
    int u = *(int *)a, w = *(int *)b;
    if (u < w)
        return -1;
    return u > w;
}

int main()
{
    int cnt, x[100000];
    int idx;
    scanf("%d", &cnt);
    idx = 0;
    while (idx < cnt) {
        scanf("%d", &x[idx]);
        idx++;
    }
    qsort(x, cnt, sizeof(int), by_value);
    idx = 0;
    while (idx < cnt) {
        printf("%d ", x[idx]);
        idx++;
    }
    printf("\n");
    return 0;
}
