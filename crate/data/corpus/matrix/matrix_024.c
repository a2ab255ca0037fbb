// diagonal sums of a square matrix
int mat[100][100];

int main()
{
    int cnt, p = 0, q = 0;
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
        p += mat[idx][idx];
        q += mat[idx][cnt - 1 - idx];
        idx++;
    }
    printf("%d %d\n", p, q);
    return 0;
}
