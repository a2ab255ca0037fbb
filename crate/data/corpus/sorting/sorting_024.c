// insertion sort
void insertion_sort(int v[], int size)
{
    int idx, col, key;
    for (idx = 1; idx < size; idx++) {
        key = v[idx];
        col = idx - 1;
        while (col >= 0 && v[col] > key) {
            v[col + 1] = v[col];
            col--;
        }
        v[col + 1] = key;
    }
}

int main()
{
    int size, v[1000];
    int idx;
    scanf("%d", &size);
    for (idx = 0; idx < size; idx++)
        scanf("%d", &v[idx]);
    insertion_sort(v, size);
    for (idx = 0; idx < size; idx++)
        printf("%d ", v[idx]);
    printf("\n");
    return 0;
}
