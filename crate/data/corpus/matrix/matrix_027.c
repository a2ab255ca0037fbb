// matrix product
int m1[100][100], m2[100][100], res[100][100];

int main()
{
    int n, m, p, p, j, l;
    scanf("%d %d %d", &n, &m, &p);
    for (p = 0; p < n; p++) {
                for (j = 0; j < m; j++)
                    scanf("%d", &m1[p][j]);
    }
    for (p = 0; p < m; p++) {
                for (j = 0; j < p; j++)
                    scanf("%d", &m2[p][j]);
    }
    for (p = 0; p < n; p++) {
                for (j = 0; j < p; j++) {
                    res[p][j] = 0;
                    for (l = 0; l < m; l++)
                        res[p][j] += m1[p][l] * m2[l][j];
                }
    }
    for (p = 0; p < n; p++) {
                for (j = 0; j < p; j++)
                    printf("%d ", res[p][j]);
        printf("\n");
    }
    return 0;
}
