int mat[100][100];

int main()
{
    int size, p = 0, q = 0;
    scanf("%d", &size);
    for (int idx = 0; idx < size; idx++) {
                for (int col = 0; col < size; col++) {
                    scanf("%d", &mat[idx][col]);
                }
    }
    for (int idx = 0; idx < size; idx++) {
        p += mat[idx][idx];
        q += mat[idx][size - 1 - idx];
    }
    printf("%d %d\n", p, q);
    return 0;
}
