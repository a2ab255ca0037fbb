int tmp2[100000];

void merge_sort(int *a, int lo, int hi)
{
    int mid, p, q, k;
    if (hi - lo < 2)
        return;
    mid = (lo + hi) / 2;
    merge_sort(a, lo, mid);
    merge_sort(a, mid, hi);
    p = lo;
    q = mid;
    k = lo;
    while (p < mid && q < hi) {
        if (a[p] <= a[q])
            tmp2[k++] = a[p++];
        else
            tmp2[k++] = a[q++];
    }
    while (p < mid)
        tmp2[k++] = a[p++];
    while (q < hi)
        tmp2[k++] = a[q++];
    for (k = lo; k < hi; k++)
        a[k] = tmp2[k];
}

int main()
{
    int cnt, a[100000];
    int p;
    scanf("%d", &cnt);
    p = 0;
    while (p < cnt) {
        scanf("%d", &a[p]);
        p++;
    }
    merge_sort(a, 0, cnt);
    p = 0;
    while (p < cnt) {
        printf("%d ", a[p]);
        p++;
    }
    printf("\n");
    return 0;
}
