void insertion_sort(int a[], int num)
{
    int k, q, key;
    for (k = 1; k < num; k++) {
        key = a[k];
        q = k - 1;
        while (q >= 0 && a[q] > key) {
            a[q + 1] = a[q];
            q--;
        }
        a[q + 1] = key;
    }
}

int main()
{
    int num, a[1000];
    int k;
    scanf("%d", &num);
    k = 0;
    while (k < num) {
        scanf("%d", &a[k]);
        k++;
    }
    insertion_sort(a, num);
    k = 0;
    while (k < num) {
        printf("%d ", a[k]);
        k++;
    }
    printf("\n");
    return 0;
}
