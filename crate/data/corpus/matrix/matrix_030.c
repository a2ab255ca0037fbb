/* diagonal sums of a square matrix */
int mat[100][100];

int main()
{
    int cnt, d1 = 0, d2 = 0;
    int idx, q;
    scanf("%d", &cnt);
    idx = 0;
    while (idx < cnt) {
        q = 0;
        while (q < cnt) {
        scanf("%d", &mat[idx][q]);
        q++;
        }
        idx++;
    }
    idx = 0;
    while (idx < cnt) {
        d1 += mat[idx][idx];
        d2 += mat[idx][cnt - 1 - idx];
        idx++;
    }
    printf("%d %d\n", d1, d2);
    return 0;
}
