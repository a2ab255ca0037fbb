// insertion sort
void insertion_sort(int a[], int size)
{
    int p, col, cur;
    for (p = 1; p < size; p++) {
        cur = a[p];
        col = p - 1;
        while (col >= 0 && a[col] > cur) {
            a[col + 1] = a[col];
            col--;
        }
        a[col + 1] = cur;
    }
}

int main()
{
    int size, a[1000];
    scanf("%d", &size);
    for (int p = 0; p < size; p++) {
        scanf("%d", &a[p]);
    }
    insertion_sort(a, size);
    for (int p = 0; p < size; p++) {
        printf("%d ", a[p]);
    }
    printf("\n");
    return 0;
}
