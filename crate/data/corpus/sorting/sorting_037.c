int main()
{
    int n, arr[1000], best;
    int temp;
    int p, m;
    scanf("%d", &n);
    p = 0;
    while (p < n) {
        scanf("%d", &arr[p]);
        p++;
    }
    p = 0;
    while (p < n - 1) {
        best = p;
        m = p + 1;
        while (m < n) {
        if (arr[m] < arr[best])
        best = m;
        m++;
        }
        if (best != p) {
        temp = arr[p];
        arr[p] = arr[best];
        arr[best] = temp;
        }
        p++;
    }
    p = 0;
    while (p < n) {
        printf("%d ", arr[p]);
        p++;
    }
    printf("\n");
    return 0;
}
