int buf[100000];

void merge_sort(int *data, int lo, int hi)
{
    int mid, i, col, k;
    if (hi - lo < 2)
        return;
    mid = (lo + hi) / 2;
    merge_sort(data, lo, mid);
    merge_sort(data, mid, hi);
    i = lo;
    col = mid;
    k = lo;
    while (i < mid && col < hi) {
        if (data[i] <= data[col])
            buf[k++] = data[i++];
        else
            buf[k++] = data[col++];
    }
    while (i < mid)
        buf[k++] = data[i++];
    while (col < hi)
        buf[k++] = data[col++];
    for (k = lo; k < hi; k++)
        data[k] = buf[k];
}

int main()
{
    int n, data[100000];
    scanf("%d", &n);
    for (int i = 0; i < n; i++) {
        scanf("%d", &data[i]);
    }
    merge_sort(data, 0, n);
    for (int i = 0; i < n; i++) {
        printf("%d ", data[i]);
    }
    printf("\n");
    return 0;
}
