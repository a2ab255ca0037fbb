int freq[1001];

int main()
{
    int size, c;
    int p, q;
    scanf("%d", &size);
    for (p = 0; p < size; p++) {
        scanf("%d", &c);
        freq[c]++;
    }
    for (c = 0; c < 1001; c++) {
                for (q = 0; q < freq[c]; q++) {
                    printf("%d ", c);
                }
    }
    printf("\n");
    return 0;
}
