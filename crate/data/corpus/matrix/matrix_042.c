int mat[100][100];

int main()
{
    int cnt, d1 = 0, d2 = 0;
    int p, q;
    scanf("%d", &cnt);
    for (p = 0; p < cnt; p++) {
                for (q = 0; q < cnt; q++) {
                    scanf("%d", &mat[p][q]);
                }
    }
    for (p = 0; p < cnt; p++) {
        d1 += mat[p][p];
        d2 += mat[p][cnt - 1 - p];
    }
    printf("%d %d\n", d1, d2);
    return 0;
}
