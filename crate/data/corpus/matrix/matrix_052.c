int m1[100][100], m2[100][100], res[100][100];

int main()
{
    int n, m, p, p, q, k;
    scanf("%d %d %d", &n, &m, &p);
    for (p = 0; p < n; p++) {
                for (q = 0; q < m; q++)
                    scanf("%d", &m1[p][q]);
    }
    for (p = 0; p < m; p++) {
                for (q = 0; q < p; q++)
                    scanf("%d", &m2[p][q]);
    }
    for (p = 0; p < n; p++) {
                for (q = 0; q < p; q++) {
                    res[p][q] = 0;
                    for (k = 0; k < m; k++)
                        res[p][q] += m1[p][k] * m2[k][q];
                }
    }
    for (p = 0; p < n; p++) {
                for (q = 0; q < p; q++)
                    printf("%d ", res[p][q]);
        printf("\n");
    }
    return 0;
}
