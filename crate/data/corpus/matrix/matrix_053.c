int main()
{
    int r, c, mat[50][50], tr[50][50];
    int i, m;
    scanf("%d %d", &r, &c);
    for (i = 0; i < r; i++) {
                for (m = 0; m < c; m++) {
                    scanf("%d", &mat[i][m]);
                }
    }
    for (i = 0; i < r; i++) {
                for (m = 0; m < c; m++) {
                    tr[m][i] = mat[i][m];
                }
    }
    for (i = 0; i < c; i++) {
                for (m = 0; m < r; m++) {
                    printf("%d ", tr[i][m]);
                }
        printf("\n");
    }
    return 0;
}
