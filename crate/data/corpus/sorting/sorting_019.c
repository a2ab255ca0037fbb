int bucket[1001];

int main()
{
    int len, val;
    scanf("%d", &len);
    for (int k = 0; k < len; k++) {
        scanf("%d", &val);
        bucket[val]++;
    }
    for (int val = 0; val < 1001; val++) {
                for (int q = 0; q < bucket[val]; q++)
                    printf("%d ", val);
    }
    printf("\n");
    return 0;
}
