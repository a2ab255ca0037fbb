int main()
{
    int n, data[1000];
    int t;
    int p, m;
    scanf("%d", &n);
    for (p = 0; p < n; p++)
        scanf("%d", &data[p]);
    for (p = 0; p < n - 1; p++) {
                for (m = 0; m < n - 1 - p; m++) {
                    if (data[m] > data[m + 1]) {
                                    t = data[m];
                                    data[m] = data[m + 1];
                                    data[m + 1] = t;
                                }
                }
    }
    for (p = 0; p < n; p++)
        printf("%d ", data[p]);
    printf("\n");
    return 0;
}
