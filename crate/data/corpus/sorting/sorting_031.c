void insertion_sort(int x[], int n)
{
    int idx, m, cur;
    for (idx = 1; idx < n; idx++) {
        cur = x[idx];
        m = idx - 1;
        while (m >= 0 && x[m] > cur) {
            x[m + 1] = x[m];
            m--;
        }
        x[m + 1] = cur;
    }
}

int main()
{
    int n, x[1000];
    int idx;
    scanf("%d", &n);
    idx = 0;
    while (idx < n) {
        scanf("%d", &x[idx]);
        idx++;
    }
    insertion_sort(x, n);
    idx = 0;
    while (idx < n) {
        printf("%d ", x[idx]);
        idx++;
    }
    printf("\n");
    return 0;
}
