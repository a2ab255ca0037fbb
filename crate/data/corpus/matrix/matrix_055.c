// diagonal sums of a square matrix
int sq[100][100];

int main()
{
    int cnt, main_d = 0, anti_d = 0;
    int k, col;
    scanf("%d", &cnt);
    for (k = 0; k < cnt; k++) {
                for (col = 0; col < cnt; col++)
                    scanf("%d", &sq[k][col]);
    }
    for (k = 0; k < cnt; k++) {
        main_d += sq[k][k];
        anti_d += sq[k][cnt - 1 - k];
    }
    printf("%d %d\n", main_d, anti_d);
    return 0;
}
