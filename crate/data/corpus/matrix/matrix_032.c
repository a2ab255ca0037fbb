int main()
{
    int a[3][3], d = 0, sgn = 1;
    int i, m;
    i = 0;
    while (i < 3) {
        m = 0;
        while (m < 3) {
        scanf("%d", &a[i][m]);
        m++;
        }
        i++;
    }
    i = 0;
    while (i < 3) {
        d += a[0][i] * (a[1][(i + 1) % 3] * a[2][(i + 2) % 3] - a[1][(i + 2) % 3] * a[2][(i + 1) % 3]);
        i++;
    }
    printf("%d\n", d);
    return 0;
}
