/* sort with the library qsort */
int cmp(const void *p, const void *q)
{
    return *(const int *)p - *(const int *)q;
}

int main()
{
    int num, data[100000];
    int k;
    scanf("%d", &num);
    k = 0;
    while (k < num) {
        scanf("%d", &data[k]);
        k++;
    }
    qsort(data, num, sizeof(int), cmp);
    k = 0;
    while (k < num) {
        printf("%d ", data[k]);
        k++;
    }
    printf("\n");
    return 0;
}
