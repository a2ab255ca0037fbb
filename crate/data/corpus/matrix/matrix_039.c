// matrix product
int m1[100][100], m2[100][100], res[100][100];

int main()
{
    int n, m, p, i, q, t;
    scanf("%d %d %d", &n, &m, &p);
    i = 0;
    while (i < n) {
        q = 0;
        while (q < m) {
        scanf("%d", &m1[i][q]);
        q++;
        }
        i++;
    }
    i = 0;
    while (i < m) {
        q = 0;
        while (q < p) {
        scanf("%d", &m2[i][q]);
        q++;
        }
        i++;
    }
    i = 0;
    while (i < n) {
        q = 0;
        while (q < p) {
        res[i][q] = 0;
        for (t = 0; t < m; t++)
        res[i][q] += m1[i][t] * m2[t][q];
        q++;
        }
        i++;
    }
    i = 0;
    while (i < n) {
        q = 0;
        while (q < p) {
        printf("%d ", res[i][q]);
        q++;
        }
        printf("\n");
        i++;
    }
    return 0;
}
