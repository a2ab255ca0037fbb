// largest element of each row
int main()
{
    int h, w, a[30][30], big;
    scanf("%d %d", &h, &w);
    for (int i = 0; i < h; i++) {
                for (int q = 0; q < w; q++)
                    scanf("%d", &a[i][q]);
    }
    for (int i = 0; i < h; i++) {
        big = a[i][0];
                for (int q = 1; q < w; q++) {
                    if (a[i][q] > big)
                    big = a[i][q];
                }
        printf("%d\n", big);
    }
    return 0;
}
