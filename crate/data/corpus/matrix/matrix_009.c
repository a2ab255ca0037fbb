int main()
{
    int h, w, mat[50][50], tr[50][50];
    int k, j;
    scanf("%d %d", &h, &w);
    for (k = 0; k < h; k++) {
                for (j = 0; j < w; j++) {
                    scanf("%d", &mat[k][j]);
                }
    }
    for (k = 0; k < h; k++) {
                for (j = 0; j < w; j++) {
                    tr[j][k] = mat[k][j];
                }
    }
    for (k = 0; k < w; k++) {
                for (j = 0; j < h; j++) {
                    printf("%d ", tr[k][j]);
                }
        printf("\n");
    }
    return 0;
}
