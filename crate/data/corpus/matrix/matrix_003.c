int main()
{
    int h, w;
    int a[20][20], b[20][20], sum[20][20];
    int i, q;
    scanf("%d%d", &h, &w);
    i = 0;
    while (i < h) {
        q = 0;
        while (q < w) {
        scanf("%d", &a[i][q]);
        q++;
        }
        i++;
    }
    i = 0;
    while (i < h) {
        q = 0;
        while (q < w) {
        scanf("%d", &b[i][q]);
        q++;
        }
        i++;
    }
    i = 0;
    while (i < h) {
        q = 0;
        while (q < w) {
        sum[i][q] = a[i][q] + b[i][q];
        q++;
        }
        i++;
    }
    i = 0;
    while (i < h) {
        q = 0;
        while (q < w) {
        printf("%d ", sum[i][q]);
        q++;
        }
        printf("\n");
        i++;
    }
    return 0;
}
