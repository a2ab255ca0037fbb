int tmp2[100000];

void merge_sort(int *x, int lo, int hi)
{
    int mid, idx, q, k;
    if (hi - lo < 2)
        return;
    mid = (lo + hi) / 2;
    merge_sort(x, lo, mid);
    merge_sort(x, mid, hi);
    idx = lo;
    q = mid;
    k = lo;
    while (idx < mid && q < hi) {
        if (x[idx] <= x[q])
            tmp2[k++] = x[idx++];
        else
            tmp2[k++] = x[q++];
    }
    while (idx < mid)
        tmp2[k++] = x[idx++];
    while (q < hi)
        tmp2[k++] = x[q++];
    for (k = lo; k < hi; k++)
        x[k] = tmp2[k];
}

int main()
{
    int len, x[100000];
    int idx;
    scanf("%d", &len);
    idx = 0;
    while (idx < len) {
        scanf("%d", &x[idx]);
        idx++;
    }
    merge_sort(x, 0, len);
    idx = 0;
    while (idx < len) {
        printf("%d ", x[idx]);
        idx++;
    }
    printf("\n");
    return 0;
}
