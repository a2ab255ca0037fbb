int cnt[1001];

int main()
{
    int cnt, c;
    int p, col;
    scanf("%d", &cnt);
    for (p = 0; p < cnt; p++) {
        scanf("%d", &c);
        cnt[c]++;
    }
    for (c = 0; c < 1001; c++) {
                for (col = 0; col < cnt[c]; col++) {
                    printf("%d ", c);
                }
    }
    printf("\n");
    return 0;
}
