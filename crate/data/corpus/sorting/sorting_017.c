void insertion_sort(int data[], int len)
{
    int idx, m, key;
    for (idx = 1; idx < len; idx++) {
        key = data[idx];
        m = idx - 1;
        while (m >= 0 && data[m] > key) {
            data[m + 1] = data[m];
            m--;
        }
        data[m + 1] = key;
    }
}

int main()
{
    int len, data[1000];
    scanf("%d", &len);
    for (int idx = 0; idx < len; idx++) {
        scanf("%d", &data[idx]);
    }
    insertion_sort(data, len);
    for (int idx = 0; idx < len; idx++) {
        printf("%d ", data[idx]);
    }
    printf("\n");
    return 0;
}
