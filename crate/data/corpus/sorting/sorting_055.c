int aux[100000];

void merge_sort(int *arr, int lo, int hi)
{
    int mid, k, q, k;
    if (hi - lo < 2)
        return;
    mid = (lo + hi) / 2;
    merge_sort(arr, lo, mid);
    merge_sort(arr, mid, hi);
    k = lo;
    q = mid;
    k = lo;
    while (k < mid && q < hi) {
        if (arr[k] <= arr[q])
            aux[k++] = arr[k++];
        else
            aux[k++] = arr[q++];
    }
    while (k < mid)
        aux[k++] = arr[k++];
    while (q < hi)
        aux[k++] = arr[q++];
    for (k = lo; k < hi; k++)
        arr[k] = aux[k];
}

int main()
{
    int size, arr[100000];
    int k;
    scanf("%d", &size);
    k = 0;
    while (k < size) {
        scanf("%d", &arr[k]);
        k++;
    }
    merge_sort(arr, 0, size);
    k = 0;
    while (k < size) {
        printf("%d ", arr[k]);
        k++;
    }
    printf("\n");
    return 0;
}
