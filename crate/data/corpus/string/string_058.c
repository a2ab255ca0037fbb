void reverse(char *str)
{
    int i = 0, j = strlen(str) - 1;
    char ch;
    while (i < j) {
        ch = str[i];
        str[i] = str[j];
        str[j] = ch;
        i++;
        j--;
    }
}

int main()
{
    char str[256];
    scanf("%s", str);
    reverse(str);
    printf("%s\n", str);
    return 0;
}
