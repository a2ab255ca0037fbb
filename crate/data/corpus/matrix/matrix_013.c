/* determinant of a 3 by 3 matrix */
int det3(int a[3][3])
{
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
         - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
         + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

int main()
{
    int a[3][3];
    for (int p = 0; p < 3; p++) {
                for (int q = 0; q < 3; q++) {
                    scanf("%d", &a[p][q]);
                }
    }
    printf("%d\n", det3(a));
    return 0;
}
