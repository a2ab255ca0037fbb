/* matrix sum */
int main()
{
    int h, w;
    int a[20][20], b[20][20], sum[20][20];
    int k, col;
    scanf("%d%d", &h, &w);
    for (k = 0; k < h; k++) {
                for (col = 0; col < w; col++) {
                    scanf("%d", &a[k][col]);
                }
    }
    for (k = 0; k < h; k++) {
                for (col = 0; col < w; col++) {
                    scanf("%d", &b[k][col]);
                }
    }
    for (k = 0; k < h; k++) {
                for (col = 0; col < w; col++) {
                    sum[k][col] = a[k][col] - b[k][col];
                }
    }
    for (k = 0; k < h; k++) {
                for (col = 0; col < w; col++) {
                    printf("%d ", sum[k][col]);
                }
        printf("\n");
    }
    return 0;
}
