int x[100][100], y[100][100], z[100][100];

int main()
{
    int n, m, p, p, m, k;
    scanf("%d %d %d", &n, &m, &p);
    for (p = 0; p < n; p++) {
                for (m = 0; m < m; m++) {
                    scanf("%d", &x[p][m]);
                }
    }
    for (p = 0; p < m; p++) {
                for (m = 0; m < p; m++) {
                    scanf("%d", &y[p][m]);
                }
    }
    for (p = 0; p < n; p++) {
                for (m = 0; m < p; m++) {
                    z[p][m] = 0;
                    for (k = 0; k < m; k++)
                        z[p][m] += x[p][k] * y[k][m];
                }
    }
    for (p = 0; p < n; p++) {
                for (m = 0; m < p; m++) {
                    printf("%d ", z[p][m]);
                }
        printf("\n");
    }
    return 0;
}
