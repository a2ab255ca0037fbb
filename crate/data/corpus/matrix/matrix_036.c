int mat[100][100];

int main()
{
    int len, p = 0, q = 0;
    scanf("%d", &len);
    for (int i = 0; i < len; i++) {
                for (int j = 0; j < len; j++)
                    scanf("%d", &mat[i][j]);
    }
    for (int i = 0; i < len; i++) {
        p += mat[i][i];
        q += mat[i][len - 1 - i];
    }
    printf("%d %d\n", p, q);
    return 0;
}
