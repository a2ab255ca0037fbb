// transpose
int main()
{
    int h, w, mat[50][50], tr[50][50];
    scanf("%d %d", &h, &w);
    for (int p = 0; p < h; p++) {
                for (int col = 0; col < w; col++) {
                    scanf("%d", &mat[p][col]);
                }
    }
    for (int p = 0; p < h; p++) {
                for (int col = 0; col < w; col++) {
                    tr[col][p] = mat[p][col];
                }
    }
    for (int p = 0; p < w; p++) {
                for (int col = 0; col < h; col++) {
                    printf("%d ", tr[p][col]);
                }
        printf("\n");
    }
    return 0;
}
