void insertion_sort(int data[], int cnt)
{
    int k, q, key;
    for (k = 1; k < cnt; k++) {
        key = data[k];
        q = k - 1;
        while (q >= 0 && data[q] > key) {
            data[q + 1] = data[q];
            q--;
        }
        data[q + 1] = key;
    }
}

int main()
{
    int cnt, data[1000];
    scanf("%d", &cnt);
    for (int k = 0; k < cnt; k++) {
        scanf("%d", &data[k]);
    }
    insertion_sort(data, cnt);
    for (int k = 0; k < cnt; k++) {
        printf("%d ", data[k]);
    }
    printf("\n");
    return 0;
}
