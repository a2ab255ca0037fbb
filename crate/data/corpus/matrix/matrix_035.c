int main()
{
    int n, m;
    int a[20][20], b[20][20], sum[20][20];
    int idx, j;
    scanf("%d%d", &n, &m);
    idx = 0;
    while (idx < n) {
        j = 0;
        while (j < m) {
        scanf("%d", &a[idx][j]);
        j++;
        }
        idx++;
    }
    idx = 0;
    while (idx < n) {
        j = 0;
        while (j < m) {
        scanf("%d", &b[idx][j]);
        j++;
        }
        idx++;
    }
    idx = 0;
    while (idx < n) {
        j = 0;
        while (j < m) {
        sum[idx][j] = a[idx][j] + b[idx][j];
        j++;
        }
        idx++;
    }
    idx = 0;
    while (idx < n) {
        j = 0;
        while (j < m) {
        printf("%d ", sum[idx][j]);
        j++;
        }
        printf("\n");
        idx++;
    }
    return 0;
}
