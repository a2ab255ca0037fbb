int freq[1001];

int main()
{
    int size, c;
    scanf("%d", &size);
    for (int p = 0; p < size; p++) {
        scanf("%d", &c);
        freq[c]++;
    }
    for (int c = 0; c < 1001; c++) {
                for (int col = 0; col < freq[c]; col++) {
                    printf("%d ", c);
                }
    }
    printf("\n");
    return 0;
}
