int main()
{
    int mat[3][3], d = 0, sgn = 1;
    int idx, j;
    idx = 0;
    while (idx < 3) {
        j = 0;
        while (j < 3) {
        scanf("%d", &mat[idx][j]);
        j++;
        }
        idx++;
    }
    idx = 0;
    while (idx < 3) {
        d += mat[0][idx] * (mat[1][(idx + 1) % 3] * mat[2][(idx + 2) % 3] - mat[1][(idx + 2) % 3] * mat[2][(idx + 1) % 3]);
        idx++;
    }
    printf("%d\n", d);
    return 0;
}
