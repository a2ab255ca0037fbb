int g[100][100];

int main()
{
    int cnt, d1 = 0, d2 = 0;
    int p, q;
    scanf("%d", &cnt);
    p = 0;
    while (p < cnt) {
        q = 0;
        while (q < cnt) {
        scanf("%d", &g[p][q]);
        q++;
        }
        p++;
    }
    p = 0;
    while (p < cnt) {
        d1 += g[p][p];
        d2 += g[p][cnt - 1 - p];
        p++;
    }
    printf("%d %d\n", d1, d2);
    return 0;
}
