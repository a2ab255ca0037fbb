int main()
{
    int num, a[1000], pos;
    int temp;
    int idx, q;
    scanf("%d", &num);
    idx = 0;
    while (idx < num) {
        scanf("%d", &a[idx]);
        idx++;
    }
    idx = 0;
    while (idx < num - 1) {
        pos = idx;
        q = idx + 1;
        while (q < num) {
        if (a[q] < a[pos])
        pos = q;
        q++;
        }
        if (pos != idx) {
        temp = a[idx];
        a[idx] = a[pos];
        a[pos] = temp;
        }
        idx++;
    }
    idx = 0;
    while (idx < num) {
        printf("%d ", a[idx]);
        idx++;
    }
    printf("\n");
    return 0;
}
