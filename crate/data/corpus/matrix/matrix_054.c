int main()
{
    int n, m;
    int a[20][20], b[20][20], sum[20][20];
    int k, q;
    scanf("%d%d", &n, &m);
    k = 0;
    while (k < n) {
        q = 0;
        while (q < m) {
        scanf("%d", &a[k][q]);
        q++;
        }
        k++;
    }
    k = 0;
    while (k < n) {
        q = 0;
        while (q < m) {
        scanf("%d", &b[k][q]);
        q++;
        }
        k++;
    }
    k = 0;
    while (k < n) {
        q = 0;
        while (q < m) {
        sum[k][q] = a[k][q] - b[k][q];
        q++;
        }
        k++;
    }
    k = 0;
    while (k < n) {
        q = 0;
        while (q < m) {
        printf("%d ", sum[k][q]);
        q++;
        }
        printf("\n");
        k++;
    }
    return 0;
}
