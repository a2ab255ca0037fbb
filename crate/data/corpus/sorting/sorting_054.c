/* counting sort for small values */
int bucket[1001];

int main()
{
    int cnt, v;
    int i, m;
    scanf("%d", &cnt);
    i = 0;
    while (i < cnt) {
        scanf("%d", &v);
        bucket[v]++;
        i++;
    }
    v = 0;
    while (v < 1001) {
        m = 0;
        while (m < bucket[v]) {
        printf("%d ", v);
        m++;
        }
        v++;
    }
    printf("\n");
    return 0;
}
