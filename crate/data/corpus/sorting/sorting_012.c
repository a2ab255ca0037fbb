int cnt[1001];

int main()
{
    int size, val;
    int k, m;
    scanf("%d", &size);
    for (k = 0; k < size; k++) {
        scanf("%d", &val);
        cnt[val]++;
    }
    for (val = 0; val < 1001; val++) {
                for (m = 0; m < cnt[val]; m++) {
                    printf("%d ", val);
                }
    }
    printf("\n");
    return 0;
}
