int mat[100][100];

int main()
{
    int num, main_d = 0, anti_d = 0;
    scanf("%d", &num);
    for (int i = 0; i < num; i++) {
                for (int m = 0; m < num; m++) {
                    scanf("%d", &mat[i][m]);
                }
    }
    for (int i = 0; i < num; i++) {
        main_d += mat[i][i];
        anti_d += mat[i][num - 1 - i];
    }
    printf("%d %d\n", main_d, anti_d);
    return 0;
}
