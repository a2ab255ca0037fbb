int main()
{
    int n, m;
    int a[20][20], b[20][20], sum[20][20];
    int i, j;
    scanf("%d%d", &n, &m);
    for (i = 0; i < n; i++) {
                for (j = 0; j < m; j++) {
                    scanf("%d", &a[i][j]);
                }
    }
    for (i = 0; i < n; i++) {
                for (j = 0; j < m; j++) {
                    scanf("%d", &b[i][j]);
                }
    }
    for (i = 0; i < n; i++) {
                for (j = 0; j < m; j++) {
                    sum[i][j] = a[i][j] - b[i][j];
                }
    }
    for (i = 0; i < n; i++) {
                for (j = 0; j < m; j++) {
                    printf("%d ", sum[i][j]);
                }
        printf("\n");
    }
    return 0;
}
