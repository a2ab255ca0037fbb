/* sort with the library qsort */
int compare(const void *p, const void *q)
{
    return *(const int *)p - *(const int *)q;
}

int main()
{
    int size, arr[100000];
    int idx;
    scanf("%d", &size);
    idx = 0;
    while (idx < size) {
        scanf("%d", &arr[idx]);
        idx++;
    }
    qsort(arr, size, sizeof(int), compare);
    idx = 0;
    while (idx < size) {
        printf("%d ", arr[idx]);
        idx++;
    }
    printf("\n");
    return 0;
}
