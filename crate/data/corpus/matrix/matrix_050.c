// determinant of a 3 by 3 matrix
int main()
{
    int m[3][3], d = 0, sgn = 1;
    for (int k = 0; k < 3; k++) {
                for (int q = 0; q < 3; q++)
                    scanf("%d", &m[k][q]);
    }
    for (int k = 0; k < 3; k++)
        d += m[0][k] * (m[1][(k + 1) % 3] * m[2][(k + 2) % 3] - m[1][(k + 2) % 3] * m[2][(k + 1) % 3]);
    printf("%d\n", d);
    return 0;
}
