int det3(int mat[3][3])
{
    return mat[0][0] * (mat[1][1] * mat[2][2] - mat[1][2] * mat[2][1])
         - mat[0][1] * (mat[1][0] * mat[2][2] - mat[1][2] * mat[2][0])
         + mat[0][2] * (mat[1][0] * mat[2][1] - mat[1][1] * mat[2][0]);
}

int main()
{
    int mat[3][3];
    int p, q;
    p = 0;
    while (p < 3) {
        q = 0;
        while (q < 3) {
        scanf("%d", &mat[p][q]);
        q++;
        }
        p++;
    }
    printf("%d\n", det3(mat));
    return 0;
}
