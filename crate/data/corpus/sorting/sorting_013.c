int aux[100000];

void merge_sort(int *v, int lo, int hi)
{
    int mid, idx, q, k;
    if (hi - lo < 2)
        return;
    mid = (lo + hi) / 2;
    merge_sort(v, lo, mid);
    merge_sort(v, mid, hi);
    idx = lo;
    q = mid;
    k = lo;
    while (idx < mid && q < hi) {
        if (v[idx] <= v[q])
            aux[k++] = v[idx++];
        else
            aux[k++] = v[q++];
    }
    while (idx < mid)
        aux[k++] = v[idx++];
    while (q < hi)
        aux[k++] = v[q++];
    for (k = lo; k < hi; k++)
        v[k] = aux[k];
}

int main()
{
    int n, v[100000];
    int idx;
    scanf("%d", &n);
    idx = 0;
    while (idx < n) {
        scanf("%d", &v[idx]);
        idx++;
    }
    merge_sort(v, 0, n);
    idx = 0;
    while (idx < n) {
        printf("%d ", v[idx]);
        idx++;
    }
    printf("\n");
    return 0;
}
