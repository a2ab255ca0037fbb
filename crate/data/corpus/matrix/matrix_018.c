/* diagonal sums of a square matrix */
int g[100][100];

int main()
{
    int num, p = 0, q = 0;
    int idx, m;
    scanf("%d", &num);
    for (idx = 0; idx < num; idx++) {
                for (m = 0; m < num; m++) {
                    scanf("%d", &g[idx][m]);
                }
    }
    for (idx = 0; idx < num; idx++) {
        p += g[idx][idx];
        q += g[idx][num - 1 - idx];
    }
    printf("%d %d\n", p, q);
    return 0;
}
