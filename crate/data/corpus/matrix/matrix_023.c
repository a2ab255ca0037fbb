int main()
{
    int r, c;
    int a[20][20], b[20][20], sum[20][20];
    int k, j;
    scanf("%d%d", &r, &c);
    k = 0;
    while (k < r) {
        j = 0;
        while (j < c) {
        scanf("%d", &a[k][j]);
        j++;
        }
        k++;
    }
    k = 0;
    while (k < r) {
        j = 0;
        while (j < c) {
        scanf("%d", &b[k][j]);
        j++;
        }
        k++;
    }
    k = 0;
    while (k < r) {
        j = 0;
        while (j < c) {
        sum[k][j] = a[k][j] - b[k][j];
        j++;
        }
        k++;
    }
    k = 0;
    while (k < r) {
        j = 0;
        while (j < c) {
        printf("%d ", sum[k][j]);
        j++;
        }
        printf("\n");
        k++;
    }
    return 0;
}
