int det3(int mat[3][3])
{
    return mat[0][0] * (mat[1][1] * mat[2][2] - mat[1][2] * mat[2][1])
         - mat[0][1] * (mat[1][0] * mat[2][2] - mat[1][2] * mat[2][0])
         + mat[0][2] * (mat[1][0] * mat[2][1] - mat[1][1] * mat[2][0]);
}

int main()
{
    int mat[3][3];
    for (int p = 0; p < 3; p++) {
                for (int j = 0; j < 3; j++) {
                    scanf("%d", &mat[p][j]);
                }
    }
    printf("%d\n", det3(mat));
    return 0;
}
