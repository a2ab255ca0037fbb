int cmp(const void *a, const void *b)
{
    int u = *(int *)a, w = *(int *)b;
    if (u < w)
        return -1;
    return u > w;
}

int main()
{
    int cnt, arr[100000];
    int k;
    scanf("%d", &cnt);
    for (k = 0; k < cnt; k++) {
        scanf("%d", &arr[k]);
    }
    qsort(arr, cnt, sizeof(int), cmp);
    for (k = 0; k < cnt; k++) {
        printf("%d ", arr[k]);
    }
    printf("\n");
    return 0;
}
