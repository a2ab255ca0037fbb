int by_value(const void *left, const void *right)
{
    int u = *(int *)left, w = *(int *)right;
    if (u < w)
        return -1;
    return u > w;
}

int main()
{
    int cnt, a[100000];
    int k;
    scanf("%d", &cnt);
    for (k = 0; k < cnt; k++) {
        scanf("%d", &a[k]);
    }
    qsort(a, cnt, sizeof(int), by_value);
    for (k = 0; k < cnt; k++) {
        printf("%d ", a[k]);
    }
    printf("\n");
    return 0;
}
