int det3(int a[3][3])
{
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
         - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
         + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

int main()
{
    int a[3][3];
    int k, q;
    for (k = 0; k < 3; k++) {
                for (q = 0; q < 3; q++)
                    scanf("%d", &a[k][q]);
    }
    printf("%d\n", det3(a));
    return 0;
}
