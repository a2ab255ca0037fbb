int bucket[1001];

int main()
{
    int size, val;
    int k, j;
    scanf("%d", &size);
    k = 0;
    while (k < size) {
        scanf("%d", &val);
        bucket[val]++;
        k++;
    }
    val = 0;
    while (val < 1001) {
        j = 0;
        while (j < bucket[val]) {
        printf("%d ", val);
        j++;
        }
        val++;
    }
    printf("\n");
    return 0;
}
