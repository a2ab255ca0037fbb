int main()
{
    int num, a[1000], mi;
    int temp;
    scanf("%d", &num);
    for (int idx = 0; idx < num; idx++) {
        scanf("%d", &a[idx]);
    }
    for (int idx = 0; idx < num - 1; idx++) {
        mi = idx;
                for (int j = idx + 1; j < num; j++) {
                    if (a[j] < a[mi])
                    mi = j;
                }
        if (mi != idx) {
                    temp = a[idx];
                    a[idx] = a[mi];
                    a[mi] = temp;
                }
    }
    for (int idx = 0; idx < num; idx++) {
        printf("%d ", a[idx]);
    }
    printf("\n");
    return 0;
}
