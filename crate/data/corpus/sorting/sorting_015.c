void swap(int *x, int *y)
{
    int t = *x;
    *x = *y;
    *y = t;
}

int main()
{
    int len, a[1000];
    scanf("%d", &len);
    for (int p = 0; p < len; p++) {
        scanf("%d", &a[p]);
    }
    for (int p = 0; p < len - 1; p++) {
                for (int q = 0; q < len - 1 - p; q++) {
                    if (a[q] > a[q + 1]) {
                                    swap(&a[q], &a[q + 1]);
                                }
                }
    }
    for (int p = 0; p < len; p++) {
        printf("%d ", a[p]);
    }
    printf("\n");
    return 0;
}
