int aux[100000];

void merge_sort(int *x, int lo, int hi)
{
    int mid, idx, col, k;
    if (hi - lo < 2)
        return;
    mid = (lo + hi) / 2;
    merge_sort(x, lo, mid);
    merge_sort(x, mid, hi);
    idx = lo;
    col = mid;
    k = lo;
    while (idx < mid && col < hi) {
        if (x[idx] <= x[col])
            aux[k++] = x[idx++];
        else
            aux[k++] = x[col++];
    }
    while (idx < mid)
        aux[k++] = x[idx++];
    while (col < hi)
        aux[k++] = x[col++];
    for (k = lo; k < hi; k++)
        x[k] = aux[k];
}

int main()
{
    int n, x[100000];
    int idx;
    scanf("%d", &n);
    idx = 0;
    while (idx < n) {
        scanf("%d", &x[idx]);
        idx++;
    }
    merge_sort(x, 0, n);
    idx = 0;
    while (idx < n) {
        printf("%d ", x[idx]);
        idx++;
    }
    printf("\n");
    return 0;
}
