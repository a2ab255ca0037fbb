int main()
{
    int n, v[1000];
    int temp;
    int i, col;
    scanf("%d", &n);
    for (i = 0; i < n; i++) {
        scanf("%d", &v[i]);
    }
    for (i = 0; i < n - 1; i++) {
                for (col = 0; col < n - 1 - i; col++) {
                    if (v[col] < v[col + 1]) {
                                    temp = v[col];
                                    v[col] = v[col + 1];
                                    v[col + 1] = temp;
                                }
                }
    }
    for (i = 0; i < n; i++) {
        printf("%d ", v[i]);
    }
    printf("\n");
    return 0;
}
