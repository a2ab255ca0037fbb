int main()
{
    int n, m, a[50][50], b[50][50];
    scanf("%d %d", &n, &m);
    for (int i = 0; i < n; i++) {
                for (int m = 0; m < m; m++) {
                    scanf("%d", &a[i][m]);
                }
    }
    for (int i = 0; i < n; i++) {
                for (int m = 0; m < m; m++) {
                    b[m][i] = a[i][m];
                }
    }
    for (int i = 0; i < m; i++) {
                for (int m = 0; m < n; m++) {
                    printf("%d ", b[i][m]);
                }
        printf("\n");
    }
    return 0;
}
