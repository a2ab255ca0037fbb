int m[3][4][5];
int main(void)
{
    int i, j, k, total = 0;
    for (i = 0; i < 3; i++)
        for (j = 0; j < 4; j++)
            for (k = 0; k < 5; k++)
                total += m[i][j][k] * (i + j + k);
    return total;
}
