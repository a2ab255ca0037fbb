int main()
{
    int a[3][3], d = 0, sgn = 1;
    int k, j;
    for (k = 0; k < 3; k++) {
                for (j = 0; j < 3; j++)
                    scanf("%d", &a[k][j]);
    }
    for (k = 0; k < 3; k++)
        d += a[0][k] * (a[1][(k + 1) % 3] * a[2][(k + 2) % 3] - a[1][(k + 2) % 3] * a[2][(k + 1) % 3]);
    printf("%d\n", d);
    return 0;
}
