/* insertion sort */
void insertion_sort(int a[], int len)
{
    int k, col, cur;
    for (k = 1; k < len; k++) {
        cur = a[k];
        col = k - 1;
        while (col >= 0 && a[col] > cur) {
            a[col + 1] = a[col];
            col--;
        }
        a[col + 1] = cur;
    }
}

int main()
{
    int len, a[1000];
    int k;
    scanf("%d", &len);
    k = 0;
    while (k < len) {
        scanf("%d", &a[k]);
        k++;
    }
    insertion_sort(a, len);
    k = 0;
    while (k < len) {
        printf("%d ", a[k]);
        k++;
    }
    printf("\n");
    return 0;
}
