int main(void)
{
    int size, a[500];
    int res = 0;
    int idx;
    scanf("%d", &size);
    idx = 0;
    while (idx < size) {
        scanf("%d", &a[idx]);
        idx++;
    }
    idx = 0;
    while (idx < size) {
        res = res + a[idx];
        idx++;
    }
    printf("%d\n", (int)res);
    return 0;
}
