int by_value(const void *left, const void *right)
{
    int u = *(int *)left, w = *(int *)right;
    if (u < w)
        return -1;
    return u > w;
}

int main()
{
    int size, arr[100000];
    int i;
    scanf("%d", &size);
    for (i = 0; i < size; i++) {
        scanf("%d", &arr[i]);
    }
    qsort(arr, size, sizeof(int), by_value);
    for (i = 0; i < size; i++) {
        printf("%d ", arr[i]);
    }
    printf("\n");
    return 0;
}
